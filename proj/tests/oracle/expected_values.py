#!/usr/bin/env python3
"""Arbitrary-precision oracle for the frozen constants in the C++ test suite.

Run with: python3 tests/oracle/expected_values.py

Every [frozen] line printed here is copied verbatim into the tests. The
computations use mpmath at 50 significant digits so the printed 17-digit
doubles are correctly rounded.
"""

import mpmath as mp

mp.mp.dps = 50


def d(x):
    """Print an mpmath value rounded to the nearest double, repr style."""
    return repr(float(x))


def report(values, weights):
    """Weighted-sample report: am, gm, c, refined bound, variance, variance bound."""
    vals = [mp.mpf(v) for v in values]
    wts = [mp.mpf(w) for w in weights]
    s = sum(wts)
    wts = [w / s for w in wts]
    am = sum(w * v for w, v in zip(wts, vals))
    if any(v == 0 for v in vals):
        gm = mp.mpf(0)
    else:
        gm = mp.exp(sum(w * mp.log(v) for w, v in zip(wts, vals)))
    rootmean = sum(w * mp.sqrt(v) for w, v in zip(wts, vals))
    t = rootmean / mp.sqrt(am)
    c = 1 - t
    var = 1 - rootmean**2 / am
    return dict(am=am, gm=gm, c=c, refined=mp.exp(2 * c) * gm,
                var=var, varbound=mp.exp(var) * gm, t=t)


def holder(values, weights, r, s):
    vals = [mp.mpf(v) for v in values]
    wts = [mp.mpf(w) for w in weights]
    r = mp.mpf(r)
    s = mp.mpf(s)
    lhs = sum(w * v**r for w, v in zip(wts, vals)) ** (1 / r)
    ns = sum(w * v**s for w, v in zip(wts, vals)) ** (1 / s)
    cs = 1 - sum(w * v**(s / 2) for w, v in zip(wts, vals)) / mp.sqrt(
        sum(w * v**s for w, v in zip(wts, vals)))
    rhs = ns * (1 - (2 * r / s) * cs) ** (1 / r)
    return lhs, rhs


print("== weighted report, values=[1,4], weights=[1/2,1/2] ==")
rep = report([1, 4], [mp.mpf(1) / 2, mp.mpf(1) / 2])
for k in ("am", "gm", "c", "refined", "var", "varbound"):
    print(f"[frozen] report14.{k} = {d(rep[k])}")

print("== weighted report, values=[0,1], weights=[1/2,1/2] ==")
rep01 = report([0, 1], [mp.mpf(1) / 2, mp.mpf(1) / 2])
for k in ("am", "gm", "c", "refined", "var"):
    print(f"[frozen] report01.{k} = {d(rep01[k])}")

print("== holder refinement, values=[1,4] ==")
for r in ("0.25", "0.49"):
    lhs, rhs = holder([1, 4], [0.5, 0.5], mp.mpf(r), 1)
    print(f"[frozen] holder14_r{r}.lhs = {d(lhs)}")
    print(f"[frozen] holder14_r{r}.rhs = {d(rhs)}")

print("== power-mean limit, values=[1,4] ==")
c = rep["c"]
am = rep["am"]
limit = am * mp.exp(-2 * c)
print(f"[frozen] limit14 = {d(limit)}")
for r in ("0.25", "0.1", "0.01", "0.001", "0.0001"):
    rr = mp.mpf(r)
    rhs = am * (1 - 2 * rr * c) ** (1 / rr)
    gap = abs(rhs - limit)
    print(f"[frozen] eq3_rhs14_r{r} = {d(rhs)}   absgap={d(gap)}  relgap={d(gap/limit)}")

print("== degenerate demo, n=10 ==")
def degenerate(n, eps):
    y = [mp.mpf(eps)] + [mp.mpf(1)] * (n - 1)
    q = mp.sqrt(sum(v * v for v in y) / n)
    lhs = mp.exp(sum(mp.log(v) for v in y) / n) / q
    rhs = mp.exp((sum(v for v in y) / n) / q - 1)
    return lhs, rhs, lhs / rhs

for e in ("1e-5", "1e-10", "1e-20"):
    lhs, rhs, ratio = degenerate(10, e)
    print(f"[frozen] degen10_eps{e}: lhs={d(lhs)} rhs={d(rhs)} ratio={d(ratio)}")

print("== log-gamma reference points ==")
for x in ("0.1", "0.25", "0.5", "0.75", "1", "1.5", "2", "2.5", "6", "10.25",
          "100.5", "343.5", "1000", "12345.678", "1e6", "1e7"):
    print(f"[frozen] loggamma({x}) = {d(mp.loggamma(mp.mpf(x)))}")

print("== expected l1 norm on the unit sphere ==")
def expected_l1(n):
    n = mp.mpf(n)
    return n * mp.gamma(n / 2) / (mp.sqrt(mp.pi) * mp.gamma((n + 1) / 2))

for n in (1, 2, 3, 4, 10, 100, 1000, 100000):
    print(f"[frozen] expected_l1({n}) = {d(expected_l1(n))}")
print(f"[frozen] four_over_pi = {d(4 / mp.pi)}")
print(f"[frozen] s1_mean_n100000 = {d(expected_l1(100000) / mp.sqrt(mp.mpf(100000)))}")
print(f"[frozen] sqrt_2_over_pi = {d(mp.sqrt(2 / mp.pi))}")

print("== gamma ratio at n=2, n=100 ==")
for n in (2, 100):
    n_ = mp.mpf(n)
    print(f"[frozen] gamma_ratio({n}) = {d(mp.gamma(n_/2)/mp.gamma((n_+1)/2))}")

print("== two-term Stirling substitute for the l1 expectation ==")
def stirling_gamma(z):
    z = mp.mpf(z)
    return mp.exp(-z) * z**(z - mp.mpf(1) / 2) * mp.sqrt(2 * mp.pi) * (1 + 1 / (12 * z))

def stirling_expected_l1(n):
    n_ = mp.mpf(n)
    return n_ * stirling_gamma(n_ / 2) / (mp.sqrt(mp.pi) * stirling_gamma((n_ + 1) / 2))

for n in (10, 100, 1000, 10000):
    ex = expected_l1(n)
    st = stirling_expected_l1(n)
    print(f"[frozen] stirling({n}) = {d(st)}  reldev={d(abs(st-ex)/ex)}")

print("== certification threshold chain ==")
def guarantee(n):
    n_ = mp.mpf(n)
    t = mp.sqrt(mp.log(mp.pi / 2 * n_**2))
    upper_e = mp.sqrt(n_ / (n_ - 1)) * mp.sqrt(2 * n_ / mp.pi)
    return t, mp.exp((t + mp.pi / 2 + upper_e) / mp.sqrt(n_) - 1)

t100, g100 = guarantee(100)
print(f"[frozen] t(100) = {d(t100)}")
print(f"[frozen] guarantee(100) = {d(g100)}")
lo, hi = 2, 1
while True:
    hi = lo * 2
    if guarantee(hi)[1] < mp.mpf("0.82"):
        break
    lo = hi
lo2, hi2 = lo, hi
while hi2 - lo2 > 1:
    mid = (lo2 + hi2) // 2
    if guarantee(mid)[1] < mp.mpf("0.82"):
        hi2 = mid
    else:
        lo2 = mid
print(f"[frozen] first_certified_n = {hi2}")
print(f"[frozen] guarantee(first) = {d(guarantee(hi2)[1])}")
print(f"[frozen] guarantee(first-1) = {d(guarantee(hi2 - 1)[1])}")
print(f"[frozen] guarantee_limit = {d(mp.exp(mp.sqrt(2/mp.pi) - 1))}")

print("== geometric-mean concentration constant ==")
euler = mp.euler
psi_half = -euler - 2 * mp.log(2)
const = mp.sqrt(2) * mp.exp(psi_half / 2)
print(f"euler_gamma_20_digits = {mp.nstr(euler, 21)}")
print(f"psi(1/2) via identity  = {mp.nstr(psi_half, 21)}")
print(f"psi(1/2) via mp.digamma = {mp.nstr(mp.digamma(mp.mpf(1)/2), 21)}")
print(f"[frozen] gm_concentration_constant = {d(const)}")
print(f"constant to 25 digits = {mp.nstr(const, 25)}")

print("== tail bound values sqrt(pi/2)*exp(-t^2/2) ==")
for t in (0, 1, 2, 3):
    print(f"[frozen] tail_bound({t}) = {d(mp.sqrt(mp.pi/2) * mp.exp(-mp.mpf(t)**2 / 2))}")

print("== misc ==")
print(f"[frozen] ln_sqrt_pi = {d(mp.log(mp.sqrt(mp.pi)))}")
print(f"[frozen] ln_120 = {d(mp.log(120))}")
print(f"[frozen] normalized(2) = {d(expected_l1(2)/mp.sqrt(mp.mpf(2)))}")
print(f"[frozen] normalized(3) = {d(expected_l1(3)/mp.sqrt(mp.mpf(3)))}")
print(f"[frozen] upper(2) = {d(mp.sqrt(mp.mpf(2))*mp.sqrt(2/mp.pi))}")
print(f"[frozen] var_l1_n2 = {d(1 + 2/mp.pi - 16/mp.pi**2)}")
