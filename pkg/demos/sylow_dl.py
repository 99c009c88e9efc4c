"""Derived lengths of Sylow subgroups: closed forms next to the permutation engine."""

from psingular import derived_length, dl_sylow_classical_p2, dl_sylow_gl, dl_sylow_symmetric, sylow_sn_generators

for n, p in ((8, 2), (9, 3), (16, 2), (24, 2)):
    print(f"S_{n} p={p}: formula {dl_sylow_symmetric(n, p)}, engine {derived_length(sylow_sn_generators(n, p))}")
print("GL(12, 7), p=3:", dl_sylow_gl(12, 7, 1, 3))
print("SP(4, 3), p=2:", dl_sylow_classical_p2("SP", 4, 3))
