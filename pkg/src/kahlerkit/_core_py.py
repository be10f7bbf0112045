"""Pure-Python blade-product kernel.

Twin of the compiled ``kahlerkit._core`` extension; both expose the same
three functions and must agree bit for bit.  Basis blades are encoded as
bitmasks over generator indices, so a product is a mask XOR plus a sign
from reordering and from squaring the shared generators.
"""

BACKEND = "python"


def reorder_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of blades ``a`` and ``b``.

    Counts pairs (i in a, j in b) with i > j; each costs one transposition.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int, diag: tuple) -> tuple:
    """Product of two basis blades under a diagonal signature.

    Returns ``(mask, factor)`` where factor collects the reordering sign
    and one ``diag[k]`` per generator shared by both blades.
    """
    factor = reorder_sign(a, b)
    common = a & b
    while common:
        k = (common & -common).bit_length() - 1
        factor *= diag[k]
        if factor == 0:
            return (a ^ b, 0)
        common &= common - 1
    return (a ^ b, factor)


def mul_terms(terms_a, terms_b, diag: tuple) -> dict:
    """Geometric product of two sparse term lists ``[(mask, coeff), ...]``.

    Accumulates into a dense scratch table (at most 2**6 slots) and drops
    exact zeros, so integer-coefficient inputs stay exact.
    """
    size = 1 << len(diag)
    acc = [0j] * size
    hit = []
    for ma, ca in terms_a:
        for mb, cb in terms_b:
            factor = reorder_sign(ma, mb)
            common = ma & mb
            while common and factor:
                k = (common & -common).bit_length() - 1
                factor *= diag[k]
                common &= common - 1
            if factor:
                m = ma ^ mb
                if acc[m] == 0:
                    hit.append(m)
                acc[m] += factor * ca * cb
    return {m: acc[m] for m in sorted(set(hit)) if acc[m] != 0}
