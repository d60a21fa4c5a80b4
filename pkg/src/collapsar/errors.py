"""Exception types shared across the library.

Every domain error derives from CollapsarError and carries a stable machine
readable ``tag`` (its class name) used by the CLI when reporting failures.
"""


class CollapsarError(Exception):
    @property
    def tag(self) -> str:
        return type(self).__name__


# -- category validation ------------------------------------------------------

class LoopDetected(CollapsarError):
    """An endomorphism or a pair of opposite morphisms between two objects."""


class CompositionNotClosed(CollapsarError):
    """A composable pair without a table entry, or an entry with bad endpoints."""


class NotAssociative(CollapsarError):
    """h(gf) != (hg)f for some composable triple."""


class DanglingEndpoint(CollapsarError):
    """A morphism or composition entry refers to an unknown identifier."""


class DuplicateId(CollapsarError):
    """Identifiers inside one structure must be pairwise distinct."""


class NotEndofunctor(CollapsarError):
    """The functor handed to a fixed-point check is not an endofunctor."""


# -- complex validation -------------------------------------------------------

class VertexSetSizeMismatch(CollapsarError):
    """|vertex_set(s)| must equal dim(s) + 1 (and {v} for a vertex v)."""


class Condition1Violation(CollapsarError):
    """vertex_set(face(s, v)) != vertex_set(s) - {v}."""


class Condition2Violation(CollapsarError):
    """Face maps fail to commute: d_v d_w != d_w d_v."""


class MissingFace(CollapsarError):
    """A required face entry is absent, dangling, or out of domain."""


# -- collapse machinery -------------------------------------------------------

class StaleStep(CollapsarError):
    """A recorded collapse step no longer applies to the current structure."""


class NotContiguous(CollapsarError):
    """contiguity_join requires contiguous maps."""


class OrderViolation(CollapsarError):
    """An induced poset functor failed to preserve the face order."""


# -- oracles ------------------------------------------------------------------

class BudgetExceeded(CollapsarError):
    """An exhaustive oracle overran its size or time budget."""


class NotIsomorphism(CollapsarError):
    """The mapping handed to a cylinder construction is not an isomorphism."""


class UnknownTag(CollapsarError):
    """check_theorem received a tag it does not know."""


# -- documents / CLI ----------------------------------------------------------

class ParseError(CollapsarError):
    """A document is not syntactically or structurally well formed."""


class SchemaVersionMismatch(CollapsarError):
    """A document declares a format version this build does not speak."""
