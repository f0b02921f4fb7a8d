from ehrhart_delta.inequalities import (
    Family,
    audit,
    binom,
    by_family,
    check_athanasiadis,
    check_classical,
    check_dwarf,
    check_yoke,
    gating_failures,
)

CUAL = [1, 2, 1, 2, 0, 0]


def test_binomial_convention():
    assert binom(0, 0) == 1 and binom(-1, 0) == 1
    assert binom(-1, 1) == 0 and binom(2, 3) == 0 and binom(3, -1) == 0
    assert binom(5, 2) == 10


def test_yoke_on_example():
    reports = by_family(check_yoke(CUAL, 5, 3, 3))
    assert all(r.holds for r in reports.values())
    # I4 at i = 4 reads delta_0 + delta_1 <= delta_2 + delta_3 + delta_4 with sum 3 on both sides
    assert sum(CUAL[0:2]) == 3 == sum(CUAL[2:5])


def test_yoke_equalities_on_simplex():
    for d in range(1, 7):
        delta = [1] + [0] * d
        reports = check_yoke(delta, d, 0, d + 1)
        assert all(r.holds and r.equality for r in reports)


def test_yoke_violation_witness():
    r = by_family(check_yoke([1, 0, 1], 2, 2, 1))[Family.YOKE_I1]
    assert not r.holds and r.first_violation == 1 and (r.lhs, r.rhs) == (0, 1)


def test_classical_on_example():
    reports = by_family(check_classical(CUAL, 5, 3))
    assert reports[Family.HIBI_INEQ1].holds
    assert reports[Family.STANLEY_INEQ2].holds
    assert reports[Family.SUM_INEQ5].holds
    assert reports[Family.HIBI_LOWER_INEQ3].vacuous
    analogue = reports[Family.HENK_TAGAMI_ANALOGUE]
    assert analogue.informational and not analogue.holds
    assert gating_failures(list(reports.values())) == []


def test_classical_on_symmetric_vector():
    reports = check_classical([1, 1, 1], 2, 2)
    assert all(r.holds for r in reports)


def test_lower_bound_checked_when_interior_points_exist():
    r = by_family(check_classical([1, 0, 3, 1], 3, 3))[Family.HIBI_LOWER_INEQ3]
    assert not r.vacuous and not r.holds and r.first_violation == 1


def test_dwarf_on_simplex_is_tight():
    for d in range(1, 7):
        reports = check_dwarf([1] + [0] * d, d)
        assert all(r.holds and r.equality for r in reports)


def test_athanasiadis():
    assert all(r.holds for r in check_athanasiadis([1, 0, 0], 2))
    assert all(r.holds for r in check_athanasiadis([1, 1, 0], 2))
    ubt = by_family(check_athanasiadis([1, 1, 3], 2))[Family.ATHANASIADIS_UBT]
    assert not ubt.holds and ubt.first_violation == 2 and (ubt.lhs, ubt.rhs) == (3, 1)


def test_out_of_range_reads_zero_and_fixed_order():
    reports = audit([1, 2, 1, 2], 5)
    assert [r.family for r in reports][:3] == [
        Family.HIBI_INEQ1,
        Family.STANLEY_INEQ2,
        Family.HIBI_LOWER_INEQ3,
    ]
    assert reports == audit(CUAL, 5)


def test_implication_chain_on_corpus(corpus_entries):
    for e in corpus_entries:
        p = e.profile
        r = by_family(e.report.inequalities)
        if r[Family.YOKE_I2].holds and r[Family.YOKE_I1].holds:
            assert r[Family.SUM_INEQ5].holds, e.name
        if r[Family.SUM_INEQ5].holds and p.d >= 2:
            # the first instance of ineq1 is then strict
            delta = p.delta
            assert delta[0] + delta[1] > delta[p.d], e.name
