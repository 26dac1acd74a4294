from fractions import Fraction as Q

from hypothesis import strategies as st

from tuttekit.poly import MultiPoly

VARS_XY = ("x", "y")


def fractions(max_num=30, max_den=6):
    return st.builds(
        Q,
        st.integers(min_value=-max_num, max_value=max_num),
        st.integers(min_value=1, max_value=max_den),
    )


def polys(variables=VARS_XY, max_exp=4, max_terms=6, coeffs=None):
    if coeffs is None:
        coeffs = fractions()
    exps = st.tuples(
        *[st.integers(min_value=0, max_value=max_exp) for _ in variables]
    )
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: MultiPoly(variables, d)
    )


def nonzero_polys(variables=VARS_XY, **kw):
    return polys(variables, **kw).filter(lambda p: not p.is_zero())


def int_matrices(max_dim=4, max_entry=9):
    def build(rows, cols, flat):
        it = iter(flat)
        return [[next(it) for _ in range(cols)] for _ in range(rows)]

    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda r: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda c: st.lists(
                st.integers(min_value=-max_entry, max_value=max_entry),
                min_size=r * c,
                max_size=r * c,
            ).map(lambda flat: build(r, c, flat))
        )
    )
