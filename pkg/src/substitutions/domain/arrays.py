"""Block substitutions on ℤᵈ as numpy array operations.

A periodic block is indexed by ``γ mod p``. Inflating it replaces every
entry by the letter image of shape ``m`` and interleaves the axes; the result
starts at the coordinate ``lo = -(m // 2)`` of the seed cells, so it is
rolled back to start at the origin.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from lattices.domain import LatticePointSet


def letter_images(table: np.ndarray, blocks: tuple[int, ...]) -> np.ndarray:
    """Reshape a rule table to ``(|𝒜|, m₁, …, m_d)``.

    The seed cells are sorted lexicographically, which is C order over the
    product of the per-axis ranges.
    """
    return table.reshape((table.shape[0],) + tuple(blocks))


def inflate_periodic(
    images: np.ndarray, block: np.ndarray, blocks: tuple[int, ...]
) -> np.ndarray:
    """Apply one substitution step to a periodic block.

    Args:
        images: Letter images from :func:`letter_images`.
        block: Periodic block of period ``p``.
        blocks: Block sizes ``m``.

    Returns:
        The block of ``S(ω)`` with period ``m ⊙ p``.
    """
    d = block.ndim
    expanded = images[block]
    order = [axis for j in range(d) for axis in (j, d + j)]
    shape = tuple(p * m for p, m in zip(block.shape, blocks))
    out = expanded.transpose(order).reshape(shape)
    low = tuple(-(m // 2) for m in blocks)
    return np.roll(out, shift=low, axis=tuple(range(d)))


def shape_offsets(shape: LatticePointSet) -> tuple[np.ndarray, tuple[int, ...], tuple]:
    """Offsets from the bounding box corner, the box size and the corner."""
    points = np.array(shape.points, dtype=np.int64).reshape(len(shape), -1)
    low = points.min(axis=0)
    extent = tuple(int(e) for e in points.max(axis=0) - low + 1)
    return points - low, extent, tuple(int(c) for c in low)


def periodic_window_rows(block: np.ndarray, shape: LatticePointSet) -> np.ndarray:
    """Distinct ``T``-windows of a periodic block, values in shape order.

    Windows over one period of positions are cut from the block padded by
    wrap-around; a shape that is not a box is gathered from its bounding box.
    """
    offsets, extent, low = shape_offsets(shape)
    shift = tuple(-c for c in low)
    rolled = np.roll(block, shift=shift, axis=tuple(range(block.ndim)))
    padding = [(0, e - 1) for e in extent]
    padded = np.pad(rolled, padding, mode="wrap")
    windows = sliding_window_view(padded, extent)
    windows = windows[tuple(slice(0, p) for p in block.shape)]
    flat = windows.reshape((-1,) + extent)
    rows = flat[(slice(None),) + tuple(offsets.T)]
    return np.unique(rows.reshape(-1, len(shape)), axis=0)
