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


import math

import numpy as np
import pytest

import spinsignal as ss


def xxz_pair(n=6):
    spec = ss.ProtocolSpec()
    spec.model.model = "xxz"
    spec.model.N = n
    spec.model.J = 1.0
    spec.model.Jz = 1.0
    spec.state = "[] + [1,2]"
    spec.t_max_over_t0 = 6.0
    return spec


def test_trace_shapes_and_zero_before_t0():
    tr = ss.simulate(xxz_pair())
    times = np.asarray(tr.times_over_t0)
    assert tr.F.shape == (len(times), 6)
    assert tr.O.dtype == np.complex128
    before = times < 1.0
    assert np.all(tr.F[before] == 0.0)
    assert np.all(tr.D[before] == 0.0)
    assert np.abs(tr.F[:, 1]).max() > 1e-3


def test_waiting_times_and_fit():
    spec = ss.figure_spec("fig3a")
    table = ss.waiting_times(ss.simulate(spec))
    assert table.status == "ok"
    assert table.speed > 0
    t = [x for x in table.t_star[2:8]]
    assert all(a < b for a, b in zip(t, t[1:]))


def test_config_error_names_field():
    spec = xxz_pair()
    spec.t0 = -1.0
    with pytest.raises(ss.ConfigError, match="t0"):
        ss.simulate(spec)
    with pytest.raises(ValueError, match="figure"):
        ss.figure_spec("fig9z")


def test_free_fermion_matches_simulation():
    spec = ss.figure_spec("fig5a")
    spec.model.N = 6
    spec.t_max_over_t0 = 5.0
    tr = ss.simulate(spec)
    ff = ss.free_fermion_F(6, 0.7, 0.3, 1.0, spec.effective_t0(), tr.times_over_t0)
    assert np.abs(ff - tr.F).max() < 1e-8


def test_one_magnon_epoch():
    assert ss.one_magnon_F(4, 0.1, 0.1) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(ss.ConfigError):
        ss.one_magnon_F(4, 0.05, 0.1)


def test_sweep_cells():
    cells = ss.sweep(xxz_pair(8), "Jz/J", [0.0, 1.0], workers=2)
    assert [c["axis1"] for c in cells] == [0.0, 1.0]
    assert all(c["status"] in ("ok", "insufficient sites", "no propagation") for c in cells)


def test_figure_ids():
    ids = ss.figure_ids()
    assert "fig5b" in ids and len(ids) == 14
    assert math.isclose(ss.figure_spec("fig5a").model.Jx, 0.7)
