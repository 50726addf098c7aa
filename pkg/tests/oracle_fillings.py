"""Independent brute-force oracles for tableau counting.

These deliberately avoid the chain-walk used by the library: fillings are
generated as raw bijections onto the skew boxes and filtered for the
row/column increase condition, and straight-shape counts are recomputed from
the hook length formula.
"""

from itertools import permutations
from math import factorial


def skew_boxes(inner, outer):
    boxes = []
    for r, row_len in enumerate(outer, start=1):
        inner_len = inner[r - 1] if r - 1 < len(inner) else 0
        boxes.extend((r, c) for c in range(inner_len + 1, row_len + 1))
    return boxes


def brute_force_tableau_count(inner, outer):
    """Count standard fillings by enumerating every bijective filling of the
    skew boxes and keeping those that increase along rows and columns."""
    boxes = skew_boxes(inner, outer)
    pos = {b: i for i, b in enumerate(boxes)}
    constraints = []
    for (r, c), i in pos.items():
        if (r, c - 1) in pos:
            constraints.append((pos[(r, c - 1)], i))
        if (r - 1, c) in pos:
            constraints.append((pos[(r - 1, c)], i))
    count = 0
    for filling in permutations(range(len(boxes))):
        if all(filling[i] < filling[j] for i, j in constraints):
            count += 1
    return count


def hook_length_count(partition):
    """Standard tableau count of a straight shape via the hook length formula."""
    n = sum(partition)
    if n == 0:
        return 1
    product = 1
    for r, row_len in enumerate(partition):
        for c in range(row_len):
            arm = row_len - c - 1
            leg = sum(1 for other in partition[r + 1:] if other > c)
            product *= arm + leg + 1
    return factorial(n) // product
