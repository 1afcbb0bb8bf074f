"""Finite-group computation engine and statement-verification harness.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Typical use:

    import hclab
    g = hclab.group("S4")
    lat = hclab.all_subgroups(g)
    hclab.is_hc_subgroup(lat[1])
    hclab.verify(["T3.1"])
"""

from ._core import (  # noqa: F401
    Group,
    Subgroup,
    HclabError,
    all_subgroups,
    center,
    centralizer,
    corpus,
    derived_subgroup,
    direct_product,
    fitting,
    generalized_fitting,
    generated_subgroup,
    group,
    has_sylow_tower_supersolvable_type,
    hypercenter,
    is_c_normal,
    is_h_subgroup,
    is_hc_subgroup,
    is_isomorphic,
    is_nilpotent,
    is_normal,
    is_p_nilpotent,
    is_quasinilpotent,
    is_solvable,
    is_subnormal,
    is_supersolvable,
    is_weakly_h_subgroup,
    load_group,
    nilpotent_residual,
    normal_closure,
    normal_core,
    normalizer,
    quotient,
    statement_ids,
    subgroup,
    sylow_subgroup,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
