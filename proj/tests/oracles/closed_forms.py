#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Everything here is evaluated with mpmath at 50 significant digits and is
independent of the C++ implementation. Re-run to regenerate the numbers:

    python3 tests/oracles/closed_forms.py
"""
import mpmath as mp

mp.mp.dps = 50


def brillouin(S, x):
    p = (2 * S + 1) / (2 * S)
    q = 1 / (2 * S)
    return p * mp.coth(p * x) - q * mp.coth(q * x)


def ohmic(g, H0, gamma, Omega, mz):
    k2 = 4 * mz**2 * g**2 * gamma**2
    omega_tilde = g * (H0 + 2 * mz * Omega * gamma) / (1 + k2)
    tau_r = (1 + k2) / (2 * mz * gamma * g**2 * (H0 + 2 * mz * Omega * gamma))
    return omega_tilde, tau_r


def drude_reference(g, H0, gamma, tau, mz, mx0, my0, ts):
    """Propagates the second-order mean equations with an exact matrix exponential."""
    a = 1 / tau
    b = g * (H0 + 3 * gamma * mz / tau)
    c = (g / tau) * (H0 + 2 * gamma * mz / tau)
    # state (x, y, x', y')
    A = mp.matrix([[0, 0, 1, 0],
                   [0, 0, 0, 1],
                   [0, c, -a, b],
                   [-c, 0, -b, -a]])
    kappa = g * H0 + 2 * g * gamma * mz / tau
    v0 = mp.matrix([mx0, my0, kappa * my0, -kappa * mx0])
    out = []
    for t in ts:
        v = mp.expm(A * t) * v0
        out.append((t, v[0], v[1]))
    return out


def main():
    half = mp.mpf(1) / 2
    print("brillouin(1/2, 5) =", mp.nstr(brillouin(half, 5), 20))
    mz_eq = half * brillouin(half, mp.mpf("0.4"))
    print("mz(S=1/2,g=1,H0=8,T=10) =", mp.nstr(mz_eq, 20))

    wt, tr = ohmic(1, 8, 5, mp.mpf(10)**6, mp.mpf("0.18998"))
    print("ohmic(mz=0.18998): omega_tilde =", mp.nstr(wt, 20), " tau_R =", mp.nstr(tr, 20))

    M = mp.sqrt(3) / 2
    mz = mp.mpf("0.18998")
    c_half = mz**2 - (M**2 - mz**2) * mp.exp(-mp.pi / (wt * tr))
    print("C(pi/omega_tilde) with M=sqrt(3)/2 =", mp.nstr(c_half, 20))

    print("tau_R(classical, mz=0.19, gamma=0.01) =",
          mp.nstr(1 / (2 * mp.mpf("0.19") * mp.mpf("0.01")), 20))

    # Drude, T=10, H0=8, gamma=5, equilibrium mz, default initial moments
    M = mp.sqrt(3) / 2
    mxy = mp.sqrt(M**2 - mz_eq**2)
    mx0 = mp.sqrt(mp.mpf(3) / 5) * mxy
    my0 = mp.sqrt(mp.mpf(2) / 5) * mxy
    for tau in (mp.mpf("0.1"), mp.mpf(5)):
        ts = [mp.mpf("0.37") * tau, 3 * tau]
        for t, x, y in drude_reference(1, 8, 5, tau, mz_eq, mx0, my0, ts):
            print(f"drude tau={mp.nstr(tau, 3)} t={mp.nstr(t, 6)}: mx =", mp.nstr(x, 20),
                  " my =", mp.nstr(y, 20))

    # Drude kernel Fourier transform real part, by quadrature
    gamma, tau = mp.mpf(3), mp.mpf("0.7")
    for w in (0, 1 / tau):
        val = mp.quad(lambda t: (gamma / tau) * mp.exp(-t / tau) * mp.cos(w * t), [0, mp.inf])
        print(f"Re K_drude(gamma=3,tau=0.7,w={mp.nstr(w, 8)}) =", mp.nstr(val, 20))

    # FDT: Gaussian correlation C(t)=exp(-t^2/2), Omega_th=2 (T=1, hbar=kB=1)
    # Im R''(t) = (1/pi) int_0^inf tanh(w/2) sqrt(2 pi) exp(-w^2/2) sin(w t) dw
    for t in (mp.mpf("0.5"), mp.mpf(1), mp.mpf(2)):
        val = mp.quad(lambda w: mp.tanh(w / 2) * mp.sqrt(2 * mp.pi) * mp.exp(-w**2 / 2) * mp.sin(w * t),
                      [0, 5, 10, 40]) / mp.pi
        print(f"gaussian FDT Im R''({mp.nstr(t, 3)}) =", mp.nstr(val, 20))


if __name__ == "__main__":
    main()
