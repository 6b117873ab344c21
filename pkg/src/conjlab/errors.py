"""Exception types shared across the package."""


class InvalidPartitionError(ValueError):
    """Blocks overlap, a block is empty, or an element is not a positive integer."""


class ParseError(ValueError):
    """Malformed text form of a partition, composition or path."""


class DomainError(ValueError):
    """Input is outside the domain of the requested operation."""


class CombineDomainError(DomainError):
    """Separation record rejected by the combine domain test."""
