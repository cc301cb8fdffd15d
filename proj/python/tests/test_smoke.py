# Copyright (C) 2026 The chainring authors
# This program is Licensed under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License. See accompanying LICENSE file.

import itertools

import pytest

import chainring as cr


def test_z4_arithmetic():
    z4 = cr.Ring("unramified", 2, 1, 2)
    assert z4.name == "Z4"
    assert z4.add(3, 3) == 2
    assert z4.mul(3, 3) == 1
    assert z4.inv(3) == 3
    assert z4.theta_adic(3) == [1, 1]
    assert z4.teichmuller_set() == [0, 1]
    assert z4.valuation(0) == 2 and z4.degree(0) is None
    with pytest.raises(cr.ChainRingError, match="NonUnit"):
        z4.inv(2)


def test_inverses_by_search():
    r = cr.Tower.fixture("gr42").top
    elems = r.elements()
    one = r.pow(elems[0], 0)
    for a in elems:
        found = [b for b in elems if r.mul(a, b) == one]
        assert bool(found) == (r.valuation(a) == 0)
        if found:
            assert r.inv(a) == found[0]


def test_trace_and_frobenius():
    tw = cr.Tower.fixture("gr43")
    assert tw.m == 3
    assert tw.trace(1) == 3
    xi = tw.primitive_root(7)
    assert tw.frobenius(xi) == tw.top.pow(xi, 2)


def test_codes_and_duals():
    z4 = cr.Tower.fixture("z4")
    c = cr.Code(z4, 2, [[2, 2], [1, 1]])
    assert c.rsf == [[1, 1]]
    assert c.type == [1, 0]
    assert cr.dual(c).rsf == [[1, 3]]
    b = cr.Code(z4, 2, [[1, 1], [0, 2]])
    assert cr.dual(b).type == [0, 1]
    assert cr.Code.from_json(b.to_json()) == b


def test_dual_against_enumeration():
    z4 = cr.Tower.fixture("z4")
    rows = [[1, 2, 3], [0, 2, 2]]
    c = cr.Code(z4, 3, rows)
    d = cr.dual(c)
    for w in itertools.product(range(4), repeat=3):
        orth = all(sum(x * y for x, y in zip(w, r)) % 4 == 0 for r in rows)
        assert d.contains(list(w)) == orth


def test_delsarte_and_closure():
    tw = cr.Tower.fixture("gr42")
    xi = tw.primitive_root(3)
    b = cr.Code(tw, 2, [[1, xi]])
    lhs, rhs, equal = cr.delsarte_check(b)
    assert equal and lhs == rhs
    assert not cr.is_galois_invariant(b)
    assert cr.is_galois_invariant(cr.closure(b))
    assert cr.interior(cr.dual(b)) == cr.dual(cr.closure(b))
    assert cr.level_set(b) == [2]


def test_cyclic():
    assert cr.cyclotomic_cosets(7, 2) == [[0], [1, 2, 4], [3, 5, 6]]
    assert cr.find_interval([0, 2, 4, 6], 7) == (2, 0, 4)
    ctx = cr.CyclicContext(cr.Tower.fixture("z4").base, 7)
    assert [len(f) - 1 for f in ctx.factors()] == [1, 3, 3]
    codes = {ctx.code_from_multiindex(t).to_json() for t in ctx.all_multiindices()}
    assert len(codes) == 27
    rep = ctx.bch_check([1, 2], 1)
    assert rep["holds"] and rep["designed"] == 3
    assert cr.min_weight(cr.Code(cr.Tower.fixture("z4"), 7, [[1] * 7])) == 7


def test_verify_suite():
    assert "delsarte" in cr.suite_names()
    r = cr.verify("delsarte", cases=20, fixtures=["gr42"])
    assert r["ok"] and r["passed"] == 20
    with pytest.raises(cr.ChainRingError, match="UnknownSuite"):
        cr.verify("unknown")
