"""Brackets in gl-infinity and its exponential twist, with a Jacobi check."""

from glinf_qva import B, E, EB, e_bracket, filtration_degree, gl_bracket, jacobi_residual

print("[E[0,1], E[1,0]] =", gl_bracket(E(0, 1), E(1, 0)))
print("[E[1,2], E[2,1]] =", gl_bracket(E(1, 2), E(2, 1)), "(no central term away from the cut)")

X, Y = B(0, -1), B(1, -1)
print(f"[{X}, {Y}] =", e_bracket(X, Y))
print(f"[{B(0, 2)}, {B(1, 3)}] =", e_bracket(B(0, 2), B(1, 3)), "(B+ is abelian)")

Z = EB(2, -2, 1, 3)
print("Jacobi residual on", (str(X), str(Y), str(Z)), "=", jacobi_residual(X, Y, Z))
print("filtration degrees:", filtration_degree(X), filtration_degree(Z), "->",
      filtration_degree(e_bracket(X, Z)))
