"""genreforge: audio feature extraction and genre classification toolkit.

Decodes WAV corpora laid out GTZAN-style, extracts a fixed 57-dimension
feature vector per track or 3-second segment, trains four from-scratch
classifiers (logistic regression, random forest, gradient boosting, RBF
SVM via SMO), and evaluates them on clean and noise-injected audio.
"""

__version__ = "0.1.0"
