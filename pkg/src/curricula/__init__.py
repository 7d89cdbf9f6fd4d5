"""Curriculum development engine: a four-tier content hierarchy
(goals -> skills -> topics -> educational packages) maintained by
contributors with AI recommendations and crowd-governed editing.
"""

__version__ = "0.1.0"
