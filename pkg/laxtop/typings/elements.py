from typing import Tuple, Union

__all__ = (
    'Code',
    'Pair',
    'Triple',
    'Payload',
    'Partition',
)

# dense index of an element of a finite set (or of a T-carrier)
Code = int

# (T-element code, point) or any other pair of dense indices
Pair = Tuple[int, int]

Triple = Tuple[int, int, int]

# identity/ultrafilter: int, powerset: sorted tuple, monoid action: (m, x), t0/t1: ()
Payload = Union[int, Tuple[int, ...]]

Partition = Tuple[Tuple[int, ...], ...]
