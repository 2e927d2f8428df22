"""Exception taxonomy for the whole toolkit.

Every error carries a short machine-parsable ``category`` (its class name)
so the CLI can emit single-line diagnostics and scripts can dispatch on it.
"""


class GenreforgeError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def category(self) -> str:
        return type(self).__name__


# --- audio_io ---------------------------------------------------------------

class MalformedContainer(GenreforgeError):
    """RIFF/WAVE structure is broken (bad magic, chunk overrun, truncation)."""


class UnsupportedEncoding(GenreforgeError):
    """The WAV holds a codec or sample width this decoder does not handle."""


class EmptyAudio(GenreforgeError):
    """Decode succeeded structurally but produced zero samples."""


# --- dsp --------------------------------------------------------------------

class NonPowerOfTwoLength(GenreforgeError):
    """FFT input length is not a power of two."""


class SignalTooShort(GenreforgeError):
    """Signal shorter than the operation's minimum (one frame, two seconds, ...)."""


class KindMismatch(GenreforgeError):
    """Operation got a magnitude spectrogram where power was required, or vice versa."""


class NegativeFrequency(GenreforgeError):
    """Mel conversion of a negative frequency."""


class InvalidFrequencyRange(GenreforgeError):
    """Filterbank edges violate 0 <= f_min < f_max <= sample_rate/2."""


class FrameTooShort(GenreforgeError):
    """Frame has fewer samples than the feature needs."""


# --- dataset ----------------------------------------------------------------

class SchemaMismatch(GenreforgeError):
    """CSV header does not match the canonical 59-column schema."""


class BadValue(GenreforgeError):
    """Non-numeric cell where a feature value was expected."""


class UnknownLabel(GenreforgeError):
    """Label string outside the fixed 10-genre set."""


class NotFitted(GenreforgeError):
    """Normalizer (or model) used before fitting."""


class InsufficientClassRows(GenreforgeError):
    """A genre has too few rows (or parent tracks) to split."""


# --- noise ------------------------------------------------------------------

class TooShort(GenreforgeError):
    """Noise sequence length below the generator's minimum."""


class SilentSignal(GenreforgeError):
    """Zero-power clip: SNR is undefined."""


# --- models -----------------------------------------------------------------

class SingleClassInput(GenreforgeError):
    """Binary trainer got rows of only one label."""


class UnfittedModel(GenreforgeError):
    """Prediction requested from a model that was never fitted."""


class DimensionMismatch(GenreforgeError):
    """Input vector length differs from the model's feature count."""


class UnknownModelKind(GenreforgeError):
    """Classifier kind outside {logreg, random_forest, gradient_boosting, svm_rbf}."""


class UnknownHyperparameter(GenreforgeError):
    """Hyperparameter name not in the kind's documented set."""


# --- evaluation -------------------------------------------------------------

class LengthMismatch(GenreforgeError):
    """Paired sequences (labels, frames, centroids) differ in length."""


class EmptyInput(GenreforgeError):
    """Metric over zero samples."""

    @property
    def category(self) -> str:
        return "Empty"


class TooFewRows(GenreforgeError):
    """PCA needs at least two rows."""


class ClassAbsent(GenreforgeError):
    """Separability ratio requested for a class with no rows."""


# --- cli --------------------------------------------------------------------

class NoAudioFound(GenreforgeError):
    """Dataset root contains no readable ``<genre>/*.wav`` files."""


class IoFailure(GenreforgeError):
    """Filesystem write/read failed."""


class OutputExists(GenreforgeError):
    """Refusing to overwrite without --force."""
