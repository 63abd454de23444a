# Copyright 2026 The spinsignal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Exact spin-chain simulation of signals from a local measurement."""

from ._core import (
    ConfigError,
    DetectorTrace,
    InvariantViolation,
    ModelSpec,
    ProtocolSpec,
    SpeedFit,
    WaitingTimeTable,
    figure_ids,
    figure_spec,
    free_fermion_F,
    one_magnon_F,
    simulate,
    sweep,
    waiting_times,
)

__all__ = [
    "ConfigError",
    "DetectorTrace",
    "InvariantViolation",
    "ModelSpec",
    "ProtocolSpec",
    "SpeedFit",
    "WaitingTimeTable",
    "figure_ids",
    "figure_spec",
    "free_fermion_F",
    "one_magnon_F",
    "simulate",
    "sweep",
    "waiting_times",
]
