"""NumPy fallback for the compiled scan kernels.

Each function mirrors its counterpart in ``_ckernels.pyx``: same arguments,
same scan order, first index wins on ties.
"""

import numpy as np

# rows of the polar grid processed per vectorized block
_ROW_BLOCK = 256
_BETA_BLOCK = 4096


def ratio_argmax(num, den):
    num = np.asarray(num, dtype=np.float64)
    den = np.asarray(den, dtype=np.float64)
    if den.shape != num.shape:
        raise ValueError("num and den must have the same length")
    zeros = np.flatnonzero(den == 0.0)
    if zeros.size:
        raise ZeroDivisionError(int(zeros[0]))
    values = num / den
    best = int(np.argmax(values))
    return best, float(values[best])


def polar_scan(a0u, a0v, au, av, h0, h, radii, cosines, sines):
    radii = np.asarray(radii, dtype=np.float64)
    cosines = np.asarray(cosines, dtype=np.float64)
    sines = np.asarray(sines, dtype=np.float64)
    best_v, best_i, best_k = 0.0, -1, -1
    for start in range(0, radii.size, _ROW_BLOCK):
        rho = radii[start:start + _ROW_BLOCK, None]
        s = rho * cosines[None, :]
        t = rho * sines[None, :]
        num = h0 + s * a0u + t * a0v
        den = h + s * au + t * av
        zeros = np.argwhere(den == 0.0)
        if zeros.size:
            i, k = zeros[0]
            raise ZeroDivisionError((start + int(i), int(k)))
        values = num / den
        flat = int(np.argmax(values))
        i, k = divmod(flat, cosines.size)
        if best_i < 0 or values[i, k] > best_v:
            best_v, best_i, best_k = float(values[i, k]), start + i, k
    return best_v, best_i, best_k


def ball_j_sweep(w0, w, h0, h, r, betas):
    w0 = np.asarray(w0, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    betas = np.asarray(betas, dtype=np.float64)
    out = np.empty(betas.size)
    # direct differences rather than the expanded quadratic, which cancels badly
    for start in range(0, betas.size, _BETA_BLOCK):
        b = betas[start:start + _BETA_BLOCK]
        d = w0[None, :] - b[:, None] * w[None, :]
        out[start:start + b.size] = r * np.sqrt(np.einsum("ij,ij->i", d, d)) + h0 - b * h
    return out
