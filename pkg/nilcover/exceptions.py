class NilcoverBaseException(Exception):
    def __init__(self, error, payload={}):
        super().__init__(error, payload)
        self.payload = payload
        self.error = error


class InvalidPartitionException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('invalid_partition', payload)


class ParityMismatchException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('parity_mismatch', payload)


class PartNotFoundException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('part_not_found', payload)


class UnsupportedGroupException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('unsupported_group', payload)


class NotCartanMatrixException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('not_cartan_matrix', payload)


class LatticeEmbeddingException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('lattice_embedding', payload)


class ZeroQuadraticFormException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('zero_quadratic_form', payload)


class InvalidOrbitException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('invalid_orbit', payload)


class UnknownOrbitException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('unknown_orbit', payload)


class UnknownThetaDegreeException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('unknown_theta_degree', payload)


class DataFileException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('data_file', payload)


class QuotientTooLargeException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('quotient_too_large', payload)


class DualityConventionException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('duality_convention', payload)


class ValidationException(NilcoverBaseException):
    def __init__(self, payload={}):
        super().__init__('validation', payload)


class NilcoverAssertionException(NilcoverBaseException):
    """
    Raised when two independent computations that must agree do not. These
    point at a bug or a data error, never at bad input.
    """


class CoefficientMismatchException(NilcoverAssertionException):
    def __init__(self, payload={}):
        super().__init__('coefficient_mismatch', payload)


class SplitCriterionMismatchException(NilcoverAssertionException):
    def __init__(self, payload={}):
        super().__init__('split_criterion_mismatch', payload)


class ThetaCheckException(NilcoverAssertionException):
    def __init__(self, payload={}):
        super().__init__('theta_check', payload)
