# Error hierarchy; everything is a ValueError so callers can keep catching that


class HochschildError(ValueError):
    """Base class for every library error"""


class DimensionMismatchError(HochschildError):
    pass


class AxiomError(HochschildError):
    """An associativity, unit, bimodule, balance or automorphism axiom fails"""


class QuiverError(HochschildError):
    pass


class HypothesisError(HochschildError):
    """A precondition of an operation does not hold for the given input"""


class VerificationError(HochschildError):
    """A computed identity that must hold exactly does not"""


class InputError(HochschildError):
    """Malformed input file or command-line argument"""
