import pytest

from rankforge import FamilySpec, NumberField, construct_family


@pytest.fixture(scope="session")
def K_rat():
    """K = Q as the degree-1 number field."""
    return NumberField([0, 1])


@pytest.fixture(scope="session")
def K_gauss():
    return NumberField([1, 0, 1])


@pytest.fixture(scope="session")
def K_sqrt5():
    return NumberField([-1, -1, 1])


@pytest.fixture(scope="session")
def fam_rat(K_rat):
    """The reference family: rho = (1..6), alpha = 1 over Q."""
    spec = FamilySpec(K=K_rat, rho=tuple(K_rat.elem(i) for i in range(1, 7)),
                      alpha=K_rat.one)
    return construct_family(spec)


@pytest.fixture(scope="session")
def fam_sqrt5(K_sqrt5):
    spec = FamilySpec(K=K_sqrt5,
                      rho=tuple(K_sqrt5.elem(i) for i in range(1, 7)),
                      alpha=K_sqrt5.one)
    return construct_family(spec)


def ideal_above(K, p, X=None):
    """First prime ideal above p with norm <= X (or any norm)."""
    from rankforge import enumerate_prime_ideals

    bound = X if X is not None else p ** K.n
    for P in enumerate_prime_ideals(K, bound):
        if P.p == p:
            return P
    raise LookupError(f"no ideal above {p}")
