"""Convolution lowering kernels: im2col / col2im.

These are the only loops hot enough to matter that BLAS does not already
cover; everything downstream of the lowering is a plain matmul. Both
backends produce bit-identical outputs: col2im accumulates contributions
to each padded cell in the same (ki, kj) ascending order in both variants,
so the float additions happen in the same sequence.

Column layout: row r of the patch matrix corresponds to output position
(n, oh, ow) in row-major order; column c corresponds to (channel, ki, kj)
in row-major order, matching a kernel tensor flattened per filter.
"""

import numpy as np

from .backend import NUMBA_ENABLED, njit


def pad_nchw(x: np.ndarray, pad: int) -> np.ndarray:
    if pad == 0:
        return x
    return np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))


def _im2col_numpy(x, kh, kw, stride):
    n, c, h, w = x.shape
    oh = (h - kh) // stride + 1
    ow = (w - kw) // stride + 1
    windows = np.lib.stride_tricks.sliding_window_view(x, (kh, kw), axis=(2, 3))
    windows = windows[:, :, ::stride, ::stride, :, :]
    # (n, c, oh, ow, kh, kw) -> (n, oh, ow, c, kh, kw) -> (n*oh*ow, c*kh*kw)
    return np.ascontiguousarray(windows.transpose(0, 2, 3, 1, 4, 5)).reshape(
        n * oh * ow, c * kh * kw
    )


@njit(cache=True)
def _im2col_jit(x, kh, kw, stride):  # pragma: no cover - exercised via dispatch
    n, c, h, w = x.shape
    oh = (h - kh) // stride + 1
    ow = (w - kw) // stride + 1
    out = np.empty((n * oh * ow, c * kh * kw), dtype=np.float64)
    for ni in range(n):
        for oi in range(oh):
            for oj in range(ow):
                row = (ni * oh + oi) * ow + oj
                col = 0
                for ci in range(c):
                    for ki in range(kh):
                        for kj in range(kw):
                            out[row, col] = x[ni, ci, oi * stride + ki, oj * stride + kj]
                            col += 1
    return out


def _col2im_numpy(cols, n, c, h, w, kh, kw, stride):
    oh = (h - kh) // stride + 1
    ow = (w - kw) // stride + 1
    out = np.zeros((n, c, h, w), dtype=np.float64)
    colsr = cols.reshape(n, oh, ow, c, kh, kw)
    for ki in range(kh):
        for kj in range(kw):
            out[:, :, ki : ki + stride * oh : stride, kj : kj + stride * ow : stride] += (
                colsr[:, :, :, :, ki, kj].transpose(0, 3, 1, 2)
            )
    return out


@njit(cache=True)
def _col2im_jit(cols, n, c, h, w, kh, kw, stride):  # pragma: no cover
    oh = (h - kh) // stride + 1
    ow = (w - kw) // stride + 1
    out = np.zeros((n, c, h, w), dtype=np.float64)
    colsr = cols.reshape(n, oh, ow, c, kh, kw)
    # (ki, kj) outermost: per-cell accumulation order matches the numpy variant.
    for ki in range(kh):
        for kj in range(kw):
            for ni in range(n):
                for ci in range(c):
                    for oi in range(oh):
                        for oj in range(ow):
                            out[ni, ci, oi * stride + ki, oj * stride + kj] += colsr[
                                ni, oi, oj, ci, ki, kj
                            ]
    return out


def im2col(x: np.ndarray, kh: int, kw: int, stride: int) -> np.ndarray:
    """Lower padded NCHW input to a (n*oh*ow, c*kh*kw) patch matrix."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if NUMBA_ENABLED:
        return _im2col_jit(x, kh, kw, stride)
    return _im2col_numpy(x, kh, kw, stride)


def col2im(cols: np.ndarray, n: int, c: int, h: int, w: int, kh: int, kw: int, stride: int) -> np.ndarray:
    """Scatter-add a patch matrix back to padded NCHW shape (adjoint of im2col)."""
    cols = np.ascontiguousarray(cols, dtype=np.float64)
    if NUMBA_ENABLED:
        return _col2im_jit(cols, n, c, h, w, kh, kw, stride)
    return _col2im_numpy(cols, n, c, h, w, kh, kw, stride)
