"""Crystal bases of the queer Lie superalgebra q(n), combinatorially.

Words over ``1..n`` carry even operators ``e_i, f_i`` and odd operators
``e_ibar, f_ibar``; semistandard decomposition tableaux realize the irreducible
crystals ``B(lambda)``; tensor products decompose by three independent
shifted Littlewood-Richardson rules.
"""

from .decompose import (
    Component,
    LRResult,
    components,
    lr,
    lr_graph,
    lr_insertion,
    lr_words,
    tensor_power,
    tensor_words,
    weight_multiplicities,
)
from .graph import CrystalError, CrystalGraph, CrystalTooLarge, closure, component_of
from .insertion import (
    crystal_equivalent,
    insert_letter,
    insert_tableau,
    insert_word,
    knuth_map,
)
from .kernels import BACKEND
from .partitions import is_strict, strict_partitions
from .ssdt import (
    ShiftedTableau,
    build_crystal,
    highest_tableau,
    hook_split,
    is_hook,
    lowest_tableau,
    max_hook_subword_len,
    reading_word,
    validate,
)
from .weyl import (
    Permutation,
    apply_e,
    apply_f,
    e_odd,
    enumerate_highest,
    f_odd,
    is_highest,
    is_lowest,
    s_action,
    w_action,
)
from .words import Label, e_even, e_odd1, eps, f_even, f_odd1, labels, phi, weight

__version__ = "0.1.0"
