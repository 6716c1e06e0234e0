import math


def observed_order(e_coarse: float, e_fine: float, ratio: float = 2.0, floor: float = 0.0) -> float:
    """log(e_coarse / e_fine) / log(ratio); an exact fine level counts as infinite order.

    Two levels that both sit at or below `floor` are exact to round-off, and also count as
    infinite order.
    """
    if e_fine <= 0.0 or max(e_coarse, e_fine) <= floor:
        return math.inf
    if e_coarse <= 0.0:
        return -math.inf
    return math.log(e_coarse / e_fine) / math.log(ratio)


def reduction_order(factor: float, ratio: float = 2.0) -> float:
    """The order a given error reduction factor amounts to under one refinement by `ratio`."""
    return math.log(factor) / math.log(ratio)
