class SquareSynthError(Exception):
    """Base class for every error raised by the library. `exit_code` is what the CLI returns."""

    exit_code = 1


# spectrum

class NonFiniteInputError(SquareSynthError, ValueError):
    pass


class OddLengthError(SquareSynthError, ValueError):
    pass


class TooFewSamplesError(SquareSynthError, ValueError):
    pass


class NyquistEnergyError(SquareSynthError, ValueError):
    pass


# basis

class ZeroFunctionError(SquareSynthError, ValueError):
    pass


class UnsupportedModeError(SquareSynthError, ValueError):
    pass


# deconstruct

class NonadmissibleFundamentalError(SquareSynthError, ValueError):
    exit_code = 3


class NonadmissibleBasisError(SquareSynthError, ValueError):
    exit_code = 3


# synth

class WrongBasisKindError(SquareSynthError, ValueError):
    pass


class BadLutSizeError(SquareSynthError, ValueError):
    pass


class NotPowerOfTwoError(SquareSynthError, ValueError):
    pass


# files and parameters

class FileFormatError(SquareSynthError, ValueError):
    pass


class BadParamsError(SquareSynthError, ValueError):
    pass


class SignalIOError(SquareSynthError, OSError):
    pass
