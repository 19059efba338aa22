"""Small bitmask helpers used by the enumeration kernels.

Vertex and element sets are stored as int bitmasks throughout the package;
these helpers keep the loops readable.
"""


def bit_indices(mask):
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask):
    """Yield every submask of mask (including mask and 0), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks):
    """Subset-maximal members of a collection of bitmasks, deduplicated."""
    ordered = sorted(set(masks), key=lambda m: m.bit_count(), reverse=True)
    out = []
    for m in ordered:
        if not any(m & ~kept == 0 for kept in out):
            out.append(m)
    return out
