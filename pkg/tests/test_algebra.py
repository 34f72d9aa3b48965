import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_hilbert
from suite import efm8, efm8_mu, figure1, random_suite, u12

from omcat.algebra import (
    center_rank,
    crossing_set,
    dim_census,
    distance,
    expand_in_simples,
    flip,
    hilbert_matrix,
    hilbert_matrix_direct,
    hilbert_matrix_from_rings,
    kgroup_projective,
    koszul_identity,
    nu_and_bimodule,
    palindromic_row,
    path_algebra_oracle,
    projective_filtration,
    self_dual_conditions,
    self_dual_projectives,
    standard_class,
    standard_data,
    x_matrix,
    y_matrix,
)
from omcat.graded import ONE, GradedMatrix, LaurentPoly, q_power
from omcat.om_core import SignVector
from omcat.om_program import NonEuclidean, ProgramError
from omcat.param_space import default_parameter_space

S = SignVector.from_str
q = q_power(1)

topes = st.integers(1, 8).flatmap(
    lambda n: st.tuples(*[st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n)
                          .map(SignVector.from_signs)] * 3))

PROGRAMS = {"u1_2_line": u12, "figure1": figure1, "efm8": efm8}
PROGRAMS.update({f"random{k}": (lambda k=k: random_suite()[k]) for k in range(0, 50, 6)})


@given(topes)
def test_distance_and_crossing_sets(abc):
    a, b, c = abc
    assert distance(a, a) == 0 and distance(a, b) == distance(b, a)
    assert distance(a, c) + 2 * len(crossing_set(a, b, c)) == distance(a, b) + distance(b, c)
    assert flip(flip(a, {0}), {0}) == a and distance(a, flip(a, range(a.n))) == a.n


def test_distance_examples():
    assert distance(S("+++---"), S("++++++")) == 3
    assert crossing_set(S("++"), S("-+"), S("++")) == frozenset({0})
    with pytest.raises(ValueError):
        distance(S("+"), S("++"))


# -- Hilbert matrices ---------------------------------------------------------


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_hilbert_matrix_routes_agree(name):
    P = PROGRAMS[name]()
    H = hilbert_matrix(P)
    B = brute_hilbert(P.mu)
    assert all(H[a, b] == B[(a, b)] for a in H.order for b in H.order)
    assert H == hilbert_matrix_direct(P)
    assert H == hilbert_matrix_from_rings(P)
    assert H.is_symmetric()
    for i, a in enumerate(H.order):
        for j, b in enumerate(H.order):
            x = H[i, j]
            assert x.is_nonnegative()
            assert x.coefficient(0) == (1 if i == j else 0)
            assert x.min_degree >= distance(a, b) or x.is_zero()
            assert all((k - distance(a, b)) % 2 == 0 for k in x.to_dict())


def test_hilbert_matrix_from_rings_with_explicit_space():
    P = figure1()
    U = default_parameter_space(P)
    assert hilbert_matrix_from_rings(P, U, "quotient") == hilbert_matrix(P)
    assert hilbert_matrix_from_rings(P, None, "census") == hilbert_matrix(P)


def test_two_point_line_hilbert_matrix():
    H = hilbert_matrix(u12())
    assert [str(a) for a in H.order] == ["+-", "--"]
    assert H.entries == ((ONE, q), (q, ONE + q * q))


def test_mu_table_alone_is_enough():
    assert hilbert_matrix(efm8_mu()) == hilbert_matrix(efm8())
    assert koszul_identity(efm8_mu())


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_koszul_identity(name):
    P = PROGRAMS[name]()
    rep = koszul_identity(P)
    assert rep.ok and rep.residual.is_zero() and rep.xty_residual.is_zero()
    X, Y = x_matrix(P), y_matrix(P)
    assert (X.T @ Y) == GradedMatrix.identity(X.order)


def test_koszul_identity_fails_against_a_wrong_dual():
    # pairing a program with itself instead of its dual breaks the identity
    P = figure1()
    assert not koszul_identity(P, P)


# -- standard and projective classes ----------------------------------------------


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_projective_classes_expand_to_hilbert_rows(name):
    P = PROGRAMS[name]()
    H = hilbert_matrix(P)
    for a in H.order:
        simples = expand_in_simples(P, kgroup_projective(P, a))
        assert simples == {b: H[a, b] for b in H.order if not H[a, b].is_zero()}


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_standard_modules_and_census(name):
    P = PROGRAMS[name]()
    T = P.mu_table()
    data = standard_data(P)
    H = hilbert_matrix(P)
    for a in T.topes:
        assert data[a].standard_dim == sum(1 for b in T.topes if T.leq(b, a))
        assert sum(x.at_one() for x in standard_class(P, a).values()) == data[a].standard_dim
        assert set(data[a].up_set) == set(kgroup_projective(P, a))
    assert dim_census(P) == H.total_at_one()


def test_figure1_filtration_follows_the_direct_cone_relation():
    P = figure1()
    e = S("---+")
    filt = projective_filtration(P, e)
    assert filt == [(S("---+"), 0), (S("+--+"), 1), (S("--++"), 1), (S("+-++"), 2)]
    # the top tope lies above e only through the transitive closure
    assert P.cone.closure_leq(e, S("++++")) and not P.mu_table().leq(e, S("++++"))
    # the standard dimensions add up to the projective dimension from the path algebra
    total = sum(standard_data(P)[g].standard_dim for g, _ in filt)
    dims = path_algebra_oracle(P).dims
    assert total == 9 == sum(x.at_one() for x in dims.row(e))


@pytest.mark.parametrize("name", ["figure1", "random6", "random18", "random42"])
def test_filtrations_are_linear_extensions(name):
    P = PROGRAMS[name]()
    T = P.mu_table()
    for a in T.topes:
        filt = projective_filtration(P, a)
        assert filt[0] == (a, 0)
        assert {g for g, _ in filt} == set(T.up_set(a))
        pos = {g: i for i, (g, _) in enumerate(filt)}
        for g in pos:
            for h in pos:
                if g != h and P.cone.closure_leq(g, h):
                    assert pos[g] < pos[h]


def test_non_euclidean_filtration_is_refused():
    with pytest.raises(NonEuclidean) as exc:
        projective_filtration(efm8(), S("+++---"))
    assert len(exc.value.cycle) >= 2


# -- self-dual projectives and the center -----------------------------------------


def test_two_point_line_self_dual_projectives():
    P = u12()
    assert self_dual_projectives(P) == [S("--")]
    a, b = self_dual_conditions(P)
    assert a == b == [S("--")]


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_self_dual_projectives_have_palindromic_rows(name):
    P = PROGRAMS[name]()
    a, b = self_dual_conditions(P)
    assert set(a) == set(b)
    H = hilbert_matrix(P)
    assert all(palindromic_row(H, x) for x in a)


@pytest.mark.parametrize("name", sorted(PROGRAMS))
def test_center_rank_counts_bases(name):
    P = PROGRAMS[name]()
    assert center_rank(P, default_parameter_space(P, seed=2)) == len(P.bases)


# -- programs with a common contraction ----------------------------------------------


def test_bimodule_of_a_program_with_itself():
    P = figure1()
    B = nu_and_bimodule(P, P)
    assert all(k == v for k, v in B.nu.items())
    assert B.dims == hilbert_matrix(P)
    assert B.projective_dims == B.census


def test_bimodule_after_reorienting_g():
    P1 = figure1()
    P2 = P1.reorient(["g"])
    B = nu_and_bimodule(P1, P2)
    assert set(B.nu) == set(P1.bounded_feasible)
    assert set(B.nu.values()) == set(P2.bounded_feasible)
    assert B.projective_dims == B.census and B.total == sum(B.census.values())
    # nu sends mu1(b) to mu2(b)
    for b, a in P1.mu.items():
        assert B.nu[a] == P2.mu[b]


def test_bimodule_needs_a_common_contraction():
    with pytest.raises(ProgramError):
        nu_and_bimodule(figure1(), u12())


def test_laurent_entries_use_degree_two_steps():
    H = hilbert_matrix(figure1())
    assert isinstance(H[0, 0], LaurentPoly)
    assert all(k % 2 == 0 for k in H[0, 0].to_dict())
