"""
Recovering S and T from A = S B T
==================================

Two matrices of independent linear forms with proportional determinants
are related by A = S B T or A = S B^t T.  frobenius_decompose finds S and T
exactly, or returns a witness that no such pair exists.
"""
import time

from detrep import frobenius_decompose, gen_frobenius_instance, verify_certificate
from detrep.errors import NotEquivalent
from detrep.generators import gen_random_pair

a, b, s0, t0 = gen_frobenius_instance(2, 9, transposed=True, seed=7)
cert = frobenius_decompose(a, b)
print(cert)
print("verified:", verify_certificate(a, b, cert))

# the certificate is S0, T0 up to a scalar
lam = next(x / y for rs, r0 in zip(cert.S, s0) for x, y in zip(rs, r0) if y)
print("S = lambda * S0 with lambda =", lam)

# an unrelated pair is refuted with a concrete witness
a, b = gen_random_pair(2, 9, seed=1)
try:
    frobenius_decompose(a, b)
except NotEquivalent as exc:
    print("refuted:", exc.reason, exc.witness)

start = time.perf_counter()
for seed in range(20):
    a, b, _, _ = gen_frobenius_instance(3, 16, seed % 2 == 1, seed=seed)
    assert verify_certificate(a, b, frobenius_decompose(a, b))
print(f"20 round trips at r=3 in {time.perf_counter() - start:.2f}s")
