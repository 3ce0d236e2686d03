import json
from math import comb
from pathlib import Path

import pytest

from hgops.graded import addto
from hgops.pairing import (EtaExplicit, Puschnigg, XPairing, enumerate_partitions, eta_residual,
                           iota_parts, tensor_d)
from hgops.xcomplex import apply_lin

DATA = Path(__file__).parent / "data"


def test_partition_counts():
    assert len(enumerate_partitions(3, 1)) == 3
    assert len(enumerate_partitions(3, 2)) == 12


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("k", range(1, 5))
def test_partition_count_formula(n, k):
    parts = enumerate_partitions(n, k)
    assert len(parts) == n * comb(n + k - 1, k - 1)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert sorted(x for block in p for x in block) == list(range(n))


def test_single_interval_is_a_rotation():
    assert enumerate_partitions(3, 1) == [((0, 1, 2),), ((1, 2, 0),), ((2, 0, 1),)]


def test_partition_arguments_are_checked():
    with pytest.raises(ValueError):
        enumerate_partitions(0, 1)


def test_iota_parts_reassemble_iota(ctx_dual):
    X = ctx_dual.XA
    for t, k in X.x_basis(3):
        if t != 1:
            continue
        acc = {}
        for alpha, beta, sign, _cut in iota_parts(X.W, k):
            acc[alpha, beta] = acc.get((alpha, beta), 0) + sign
        assert {f: v for f, v in acc.items() if v} == X.iota(k)


def test_p_on_two_words_is_the_pair(ctx_dual):
    p = Puschnigg(ctx_dual.XA, ctx_dual.XA)
    assert p((0, ("x",)), (0, ("1",))) == {(0, (("x",), ("1",))): 1}


def test_p_is_a_chain_map_on_short_chains(ctx_dual):
    XA = ctx_dual.XA
    p = Puschnigg(XA, XA)
    basis = XA.x_basis(2)
    for kx in basis:
        for ky in basis:
            lhs = apply_lin(p.X2.x2_d, p(kx, ky))
            for (a, b), v in tensor_d(XA, XA, (kx, ky)).items():
                addto(lhs, p(a, b), -v)
            assert lhs == {}


def test_empty_cochain_word_acts_as_identity(ctx_dual):
    T = XPairing(ctx_dual.XV, ctx_dual.XA, ctx_dual.XA, ctx_dual.cup1)
    for y in ctx_dual.XA.x_basis(3):
        assert T((0, ()), y) == {y: 1}


def test_explicit_sums_match_composite_on_a_slice(ctx_qq):
    XV, XA = ctx_qq.XV, ctx_qq.XA
    T = XPairing(XV, XA, XA, ctx_qq.cup1)
    E = EtaExplicit(ctx_qq.S, XV, XA)
    for kx in XV.x_basis(1)[::3]:
        for ky in XA.x_basis(3)[::4]:
            assert eta_residual(T, E, kx, ky) == {}


def _frozen_table():
    doc = json.loads((DATA / "sign_table.json").read_text())
    freeze = lambda x: tuple(freeze(y) for y in x) if isinstance(x, list) else x
    return {freeze(sig): s for sig, s in doc["table"]}


def test_sign_table_matches_the_frozen_one(ctx_dual):
    frozen = _frozen_table()
    assert len(frozen) == 327
    E = EtaExplicit(ctx_dual.S, ctx_dual.XV, ctx_dual.XA)
    pairs = [(x, y) for x in ctx_dual.XV.x_basis(1) for y in ctx_dual.XA.x_basis(3)]
    table = E.sign_table(pairs)
    assert table
    assert {sig: frozen[sig] for sig in table} == table
