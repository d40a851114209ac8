"""A short walk through the toolkit: series, theta functions, v0, matrices and a suite run."""

from mocktheta import ZZ, Zmod, theta_phi, theta_psi, v0_series
from mocktheta.dissect import extract, huffing
from mocktheta.opmatrix import block, vector
from mocktheta.qexpr import evaluate
from mocktheta.suites import run_suite

N = 12

print("phi(q)   ", list(theta_phi(1, N).coeffs))
print("psi(q)   ", list(theta_psi(1, N).coeffs))

v = v0_series(4000)
print("v0(0..11)", v.tolist()[:N])

# 1 + 2 sum_{n>=1} v0(4n) q^n against phi(q)^2/phi(-q)
lhs = extract(v.series(), 4, 0).scale(2) - 1
rhs = evaluate("phi(q)^2/phi(-q)", order=lhs.order)
print("4n progression identity holds to order", lhs.order, ":", lhs == rhs)

# the Huffing operator keeps even powers in place
print("H(phi(q)^2/phi(-q))", list(huffing(rhs).coeffs[:N]))

print("M, rows 1-8:")
for row in block("M", 8, 9):
    print("  ", " ".join(f"{x:5d}" for x in row))
print(vector("x", 2))
print(vector("x", 3))

# the same expression, computed directly mod 8
print("mod 8:", list(evaluate("phi(q)^2/phi(-q)", ring=Zmod(8), order=N).coeffs))
print("exact:", list(evaluate("phi(q)^2/phi(-q)", ring=ZZ, order=N).coeffs))

print()
print(run_suite("T6").render_text())
