"""PBW normal ordering in the highest-weight module M(level, lambda)."""

from fractions import Fraction

from glinf_qva import B, VACUUM, ModuleParams, VermaModule, composite_mode, reduce_word

params = ModuleParams.make(2)
M = VermaModule(params)
v = M.act(B(1, -1), M.act(B(0, -1), VACUUM))
print("B[1,-1] B[0,-1] .1 =", v)
print("same word by rewriting:", reduce_word([B(1, -1), B(0, -1)], params))

weighted = VermaModule(ModuleParams.make(0, {3: Fraction(5, 2)}))
print("B[3,0] .1 with lambda_3 = 5/2:", weighted.act(B(3, 0), VACUUM))
print("B[0,3] kills everything:", M.act(B(0, 3), v))

for k in range(3):
    print(f"b(2)_{k} b(-1) =", composite_mode(2, k, -1, params))
