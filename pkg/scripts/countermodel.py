"""xyzxy = yxzxy: holds in M(xysxzytz), is not a consequence of N, and a
finite monoid in N separates the two sides."""

from monoidvar.deduction import free_rees_quotient, orbit
from monoidvar.families import variety_basis
from monoidvar.identities import identity
from monoidvar.monoids import satisfies, satisfies_basis, factor_monoid
from monoidvar.words import word


def main():
    sigma = identity("x y z x y = y x z x y")
    M = factor_monoid([word("x y s x z y t z")])
    print(f"M(xysxzytz), size {M.size}: {satisfies(M, sigma, 'factor_matching').outcome.value}")
    N = variety_basis("N")
    o = orbit(sigma.lhs, N)
    print(f"N-class of {sigma.lhs}: {', '.join(map(str, o.sorted()))} "
          f"({'closed' if o.closed else 'open'})")
    S = free_rees_quotient([sigma.lhs], N)
    v = satisfies(S, sigma)
    print(f"Rees quotient of the N-free monoid, size {S.size}: "
          f"in N {satisfies_basis(S, N).outcome.value}, identity {v.outcome.value}"
          + (f" via {v.witness}" if v.is_fails else ""))


if __name__ == "__main__":
    main()
