"""Clique / stable-set separators for graphs excluding two matched patterns.

The toolkit builds the forbidden patterns, decides class membership, builds
the polynomial-size separating partition family, runs the constructive
coverage argument on concrete pairs, and verifies the whole story against
brute-force oracles at small scale.
"""

from ._kernels import backend_name, has_native
from .errors import (
    CssepError,
    InputError,
    InternalInvariantError,
    ParseError,
    ResourceLimitError,
)
from .graph import (
    Graph,
    Partition,
    Relation,
    VertexSet,
    complement,
    induced_subgraph,
    is_clique,
    is_stable,
    neighbors,
    relation,
)
from .patterns import (
    Block,
    Embedding,
    PatternSpec,
    build_fk,
    build_fs,
    contains_fab,
    contains_induced,
    fab_spec,
    fk_spec,
    fs_spec,
    is_in_class,
    realize,
)
from .ramsey import EXACT_DIAGONAL, RamseyValue, ramsey_upper, verify_ramsey_property
from .separators import (
    FamilyOptions,
    Provenance,
    SeparatorFamily,
    TripleX,
    a_x,
    complement_family,
    full_family,
    p1_family,
    p2_family,
    structural_triple_ok,
)
from .testbed import (
    CorpusEntry,
    CoverageReport,
    brute_force_contains,
    brute_force_contains_pattern,
    build_corpus,
    check_separation,
    corpus_manifest_doc,
    enumerate_cliques,
    enumerate_stable_sets,
    gen_in_class,
    gen_random,
    load_corpus_manifest,
    plant_disjoint,
    relabel,
    verify_family_covers,
)
from .witness import (
    WitnessReport,
    WitnessTrace,
    extend_to_maximal,
    find_separator,
    minimal_neighbor_cover,
    minimal_z_cover,
)

__version__ = "0.1.0"
