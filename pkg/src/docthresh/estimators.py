"""Estimator-style wrappers around the functional binarization API.

Both classes follow the fit/transform protocol: construction stores
hyper-parameters verbatim (so get_params/set_params/clone work), fit
validates them (and, for Otsu, learns the global threshold), transform
maps a grayscale image to a bi-level image with 0 = foreground.

X is a single 2-D grayscale image, not an (n_samples, n_features)
matrix — these are image transformers.
"""

from __future__ import annotations

import numpy as np

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .threshold import BinarizationParams, apply_global, binarize, otsu_threshold
from .validation import as_gray_image


class OtsuBinarizer(BaseEstimator, TransformerMixin):
    """Global thresholding with the threshold learned from the fit image.

    Attributes
    ----------
    threshold_ : int
        Threshold chosen on the image passed to fit; transform applies it
        unchanged, so a threshold learned on one page can be reused on
        others from the same scan batch.

    Examples
    --------
    >>> import numpy as np
    >>> img = np.array([[10, 10, 200], [200, 10, 200]], dtype=np.uint8)
    >>> OtsuBinarizer().fit(img).transform(img)
    array([[  0,   0, 255],
           [255,   0, 255]], dtype=uint8)
    """

    def fit(self, X, y=None):
        X = as_gray_image(X)
        self.threshold_ = otsu_threshold(X)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "threshold_")
        return apply_global(as_gray_image(X), self.threshold_)


class LocalBinarizer(BaseEstimator, TransformerMixin):
    """Locally adaptive binarization (Sauvola or Niblack).

    Parameters
    ----------
    method : {'sauvola', 'niblack'}
    engine : {'naive', 'integral', 'sampled'}
        Statistics backend; all three produce identical output.
    mask : str
        Sampling structure for the sampled engine ('gs1'..'gs6', 'full').
    window : int
        Window size W, odd and >= 3.
    k : float
        Method coefficient: > 0 for sauvola, typically negative for niblack.
    r : float
        Dynamic range of the standard deviation (sauvola only).
    """

    def __init__(self, method="sauvola", engine="sampled", mask="gs3",
                 window=21, k=0.34, r=128.0):
        self.method = method
        self.engine = engine
        self.mask = mask
        self.window = window
        self.k = k
        self.r = r

    def _build_params(self) -> BinarizationParams:
        if self.method not in ("sauvola", "niblack"):
            raise ValueError(
                f"method: expected 'sauvola' or 'niblack', got {self.method!r}"
            )
        kwargs = {"k_sauvola": self.k} if self.method == "sauvola" else {"k_niblack": self.k}
        return BinarizationParams(
            method=self.method, engine=self.engine, mask=self.mask,
            window=self.window, r=self.r, **kwargs,
        ).validate()

    def fit(self, X=None, y=None):
        """Validate hyper-parameters; nothing is learned from X."""
        self.params_ = self._build_params()
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "params_")
        binary, _ = binarize(as_gray_image(X), self.params_)
        return binary
