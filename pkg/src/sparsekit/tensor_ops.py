"""Dense tensor primitives: matmul, conv2d, Bernoulli masks.

Arrays are numpy float64 throughout; 32-bit floats appear only in
checkpoint files. matmul delegates to BLAS, which is deterministic from
run to run for a fixed build; conv2d lowers to im2col + matmul.
"""

import numpy as np

from .errors import DomainError, ShapeError
from .kernels import col2im, im2col, pad_nchw
from .rng import Rng


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """2-D matrix product with explicit shape validation."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul expects 2-D operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul inner dimensions disagree: {a.shape} x {b.shape}")
    return a @ b


def conv_output_size(size: int, k: int, stride: int, pad: int) -> int:
    span = size + 2 * pad - k
    if span < 0:
        raise ShapeError(f"kernel extent {k} exceeds padded input size {size + 2 * pad}")
    if span % stride != 0:
        raise DomainError(
            f"conv output size is not an integer: (size={size} + 2*pad={pad} - k={k}) "
            f"not divisible by stride={stride}"
        )
    return span // stride + 1


def conv2d(x: np.ndarray, kernels: np.ndarray, stride: int = 1, pad: int = 0) -> np.ndarray:
    """Cross-correlation (no kernel flip) of NCHW input with FCHW kernels."""
    x = np.asarray(x, dtype=np.float64)
    kernels = np.asarray(kernels, dtype=np.float64)
    if x.ndim != 4 or kernels.ndim != 4:
        raise ShapeError(f"conv2d expects 4-D input/kernels, got {x.shape} and {kernels.shape}")
    n, c, h, w = x.shape
    f, kc, kh, kw = kernels.shape
    if kc != c:
        raise ShapeError(f"conv2d channel mismatch: input {x.shape} vs kernels {kernels.shape}")
    oh = conv_output_size(h, kh, stride, pad)
    ow = conv_output_size(w, kw, stride, pad)
    cols = im2col(pad_nchw(x, pad), kh, kw, stride)
    kmat = kernels.reshape(f, c * kh * kw).T
    out = cols @ kmat
    return out.reshape(n, oh, ow, f).transpose(0, 3, 1, 2)


def conv2d_backward(
    cols: np.ndarray,
    kmat: np.ndarray,
    dout: np.ndarray,
    x_shape,
    stride: int,
    pad: int,
):
    """Gradients of the im2col-lowered conv.

    cols: patch matrix cached from forward; kmat: (c*kh*kw, f) weights;
    dout: (n, f, oh, ow) upstream gradient. Returns (dx, dkmat, dbias).
    """
    n, c, h, w = x_shape
    _, f = kmat.shape
    dcols_rows = dout.transpose(0, 2, 3, 1).reshape(-1, f)
    dkmat = cols.T @ dcols_rows
    dbias = dcols_rows.sum(axis=0)
    dcols = dcols_rows @ kmat.T
    kh_kw = dcols.shape[1] // c
    # kernel height/width are recovered by the caller; here we only need totals
    return dcols, dkmat, dbias


def unpad_nchw(x: np.ndarray, pad: int) -> np.ndarray:
    if pad == 0:
        return x
    return x[:, :, pad:-pad, pad:-pad]


def bernoulli_mask(shape, keep_prob: float, rng: Rng) -> np.ndarray:
    """Independent 0/1 keep mask, drawn in row-major order."""
    if not 0.0 <= keep_prob <= 1.0:
        raise DomainError(f"keep_prob must be in [0, 1], got {keep_prob}")
    return (rng.uniform(shape) < keep_prob).astype(np.float64)
