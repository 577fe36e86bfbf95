import numpy as np


def diag(*values):
    return np.diag(np.array(values, dtype=np.complex128))


def scalar(value):
    return np.array([[value]], dtype=np.complex128)
