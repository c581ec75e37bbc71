from ._qcordic import *  # noqa: F401,F403
