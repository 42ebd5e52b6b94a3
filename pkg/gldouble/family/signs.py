"""Sign conventions for the phi/psi functions and the pencil coefficients."""


def sign_skl(n: int, k: int, l: int) -> int:
    """The sign s_kl attached to phi_kl and psi_kl.

    Periodic in k+l with period 4 for odd n and 2 for even n, anchored at the
    rows k+l = n, n-1, n-2, n-3.
    """
    if k < 1 or l < 1 or k + l > n:
        raise ValueError(f"sign s_kl needs k,l >= 1 and k+l <= n (n={n}, k={k}, l={l})")
    if n % 2 == 0:
        delta = (n - k - l) % 2
        return 1 if delta == 0 else (-1) ** (l + 1)
    delta = (n - k - l) % 4
    if delta == 0:
        return 1
    if delta == 1:
        return (-1) ** l
    if delta == 2:
        return -1
    return (-1) ** (l + 1)


def casimir_sign(n: int, i: int) -> int:
    """s_i in det(X + lambda Y) = sum lambda^i s_i c_i."""
    return (-1) ** i if n % 2 == 0 else 1


def pencil_exchange_sign(n: int) -> int:
    """Sign sigma with sum_r c_r phi21^r phi12^(n-r) = sigma det(s12 phi12 X + s21 phi21 Y).

    sigma = s12^n s_0, the r = 0 value of s12^(n-r) s21^r s_r, which does not depend on r.
    """
    if n < 3:
        raise ValueError("the pencil exchange relation needs n > 2")
    return sign_skl(n, 1, 2) ** n * casimir_sign(n, 0)
