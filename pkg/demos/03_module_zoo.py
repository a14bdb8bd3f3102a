"""The natural module, its symmetric and exterior powers, and the Laurent-monomial module."""

from glinf_qva import CInf, Ext, Sym, VSA

C, S2, X2 = CInf(), Sym(2), Ext(2)
V = VSA.make({0: "1/2"})

print("E[0,1] v[1] =", C.format(C.act_E(0, 1, C.basis(1))))
print("E[0,1] x[1]*x[3] =", S2.format(S2.act_E(0, 1, S2.basis(1, 3))))
print("E[3,1] v[1]^v[2] =", X2.format(X2.act_E(3, 1, X2.basis(1, 2))))
print("E[1,0] 1 in", V.selector, "=", V.format(V.act_E(1, 0, V.basis())))

w = C.basis(5)
print("Bbar(2)_1 v[5] =", C.format(C.bbar_mode(2, 1, w)))
print("Bbar(2, x) v[5] to order 3:", {e: C.format(c) for e, c in sorted(C.bbar_series(2, w, 3).terms.items())})
print("recovered E[2,2+n] v[5]:", {n: C.format(c) for n, c in C.recover_E(2, w, 3).items()})

rep = X2.level_witness(X2.basis(0, 1))
print(f"witness on v[0]^v[1]: S={rep.S}, m={rep.m}, n={rep.n}, forced K w = {X2.format(rep.forced_central)}")
