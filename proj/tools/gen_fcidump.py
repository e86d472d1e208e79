#!/usr/bin/env python3
# Copyright 2026 The mczeno Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generate STO-3G FCIDUMP files for the bundled molecules.

Sidecar script; needs PySCF. Core orbitals are frozen and folded into the
core energy and effective one-body integrals, so the written file describes
only the active space.

    python3 tools/gen_fcidump.py h2 0.7414 -o data/h2_0.7414.fcidump
    python3 tools/gen_fcidump.py h2o 0.958 --angle 104.45 --ncas 5 -o out.fcidump
"""
import argparse
import math

from pyscf import gto, mcscf, scf
from pyscf.tools import fcidump


def geometry(molecule, d, angle):
    if molecule == "h2":
        return f"H 0 0 0; H 0 0 {d}"
    if molecule == "lih":
        return f"Li 0 0 0; H {d} 0 0"
    if molecule in ("beh2", "h2o", "ch2"):
        centre = {"beh2": "Be", "h2o": "O", "ch2": "C"}[molecule]
        half = math.radians(angle) / 2.0
        x, z = d * math.sin(half), d * math.cos(half)
        return f"{centre} 0 0 0; H {x} 0 {z}; H {-x} 0 {z}"
    raise SystemExit(f"unknown molecule {molecule}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("molecule")
    ap.add_argument("distance", type=float, help="bond length in Angstrom")
    ap.add_argument("--angle", type=float, default=180.0, help="H-A-H angle in degrees")
    ap.add_argument("--ncas", type=int, default=None, help="active spatial orbitals")
    ap.add_argument("--spin", type=int, default=0)
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()

    mol = gto.M(atom=geometry(args.molecule, args.distance, args.angle),
                basis="sto-3g", spin=args.spin, verbose=0)
    mf = scf.RHF(mol).run()
    ncore = 0 if args.molecule == "h2" else 1
    ncas = args.ncas or (mol.nao - ncore)
    nelecas = mol.nelectron - 2 * ncore
    cas = mcscf.CASCI(mf, ncas, nelecas)
    h1, ecore = cas.get_h1eff()
    h2 = cas.get_h2eff()
    fcidump.from_integrals(args.output, h1, h2, ncas, nelecas, nuc=ecore,
                           ms=args.spin, tol=1e-12)


if __name__ == "__main__":
    main()
