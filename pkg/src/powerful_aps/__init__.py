"""Arithmetic progressions of k-full numbers: search, construct, verify."""

from .ntcore import (
    FactoredNatural,
    KFullDecomposition,
    certificate_parts,
    coprime_basis,
    factorize,
    is_kfull,
    is_prime,
    kfull_decompose,
    kfull_divisors,
    nu,
    radical,
)
from .witness import ProgressionWitness, Term, WitnessError, witness_from_values
from .apsearch import (
    SearchReport,
    SearchRow,
    check_primorial_divisibility,
    count_kfull,
    enumerate_kfull,
    find_aps_large_d,
    find_aps_window,
    min_common_difference,
    primitive_filter,
    ratio_truncated,
)
from .identities import BinaryForm, build_F, evaluate_form, extract_G, stirling2, surjection_sum
from .constructions import (
    CubicTriple,
    FamilyParams,
    PellPair,
    ap3_cubefull_iterate,
    ap3_cubefull_seed,
    ap3_cubefull_witness,
    ap3_squarefull,
    check_pelly,
    family_4term,
    family_params,
    pell_pair,
    pelly,
)
from .ellcurve import CURVE, P1, P2, T1, T2, Curve, Point, on_curve, scalar_mul
from .ecap4 import (
    DivisionValues,
    ab_from_n,
    nu2_psi_check,
    phi_omega,
    proposition_witness,
    psi,
    scan_periods,
    verify_intro_example,
)
from .cfrac import (
    QuarticRoot,
    cf_digits,
    cf_expand,
    find_small_d,
    isolate_roots,
    triple_from_uv,
    uv_data,
)
from .abcdiag import (
    abc_quality,
    kabc_triple,
    lemma5ap_check,
    roadie_check,
    theorem1_exponents,
    witness_diagnostics,
)

__version__ = "0.1.0"
