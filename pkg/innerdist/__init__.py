from typing import Any, Dict

__version__ = "0.3.0"

APP_NAME = "innerdist"

config: Dict[str, Any] = {
    "brute_max_order_mid": 8,
    "brute_max_order_mid_long": 10,
    "brute_max_order_full": 5,
    "brute_max_order_full_long": 6,
    "oracle_max_order": 64,
    "random_cases": 10000,
}

from . import models  # noqa: E402, F401
