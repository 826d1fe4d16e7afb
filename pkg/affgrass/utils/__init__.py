from affgrass.utils.config import Settings, get_env_with_prefix, load_config, resolve_settings
from affgrass.utils.logging import configure_logging

__all__ = ["Settings", "configure_logging", "get_env_with_prefix", "load_config", "resolve_settings"]
