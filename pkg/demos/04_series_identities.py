"""Generating-function identities checked coefficient by coefficient."""

from glinf_qva import CInf, VermaModule, ModuleParams, VACUUM, check_identity, ts_exp_diff
from glinf_qva.glinf import lemma_commutator_sides
from glinf_qva.identities import check_eq33, check_thm310
from glinf_qva.zoo import strig_locality_sides

print("e^{2(x1-x2)} to order 2:", ts_exp_diff(2, 2))

lhs, rhs = lemma_commutator_sides(0, 1, -3, 3)
print("E(m,x) commutator, m=0 n=1:", check_identity(lhs, rhs, lo=(-3, -3), hi=(3, 3)))
print("closed-form twisted bracket vs exponential series, m=1 n=-2:", check_eq33(1, -2, (-3, 3)))

M = VermaModule(ModuleParams.make(1))
print("vertex-operator commutator on the vacuum, m=0 n=1:", check_thm310(M, 0, 1, VACUUM, (-3, 3)))

C = CInf()
print("trigonometric locality on v[1], m=0 n=2:", check_identity(*strig_locality_sides(C, 0, 2, C.basis(1))))
