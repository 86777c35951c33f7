"""
Configuration module for the tubal-completion toolkit.
"""
import os
import sys
from pathlib import Path
from pydantic import BaseModel
from dotenv import load_dotenv
from loguru import logger

# Load environment variables
load_dotenv()

class Paths(BaseModel):
    """Path configuration."""
    base_dir: Path = Path(__file__).parent.parent
    log_dir: Path = Path(os.getenv("TUBAL_LOG_DIR", str(base_dir / "logs")))

    def create_directories(self):
        """Create necessary directories."""
        self.log_dir.mkdir(parents=True, exist_ok=True)

class SolverDefaults(BaseModel):
    """Default solver parameters; CLI flags override them."""
    rank: int = int(os.getenv("TUBAL_RANK", "11"))
    mu: float = float(os.getenv("TUBAL_MU", "1e-2"))
    rho: float = float(os.getenv("TUBAL_RHO", "1.5"))
    max_iters: int = int(os.getenv("TUBAL_MAX_ITERS", "100"))
    eps_scale: float = float(os.getenv("TUBAL_EPS_SCALE", "1e-7"))
    csvd_iters: int = int(os.getenv("TUBAL_CSVD_ITERS", "30"))
    csvd_tol: float = float(os.getenv("TUBAL_CSVD_TOL", "1e-12"))
    seed: int = int(os.getenv("TUBAL_SEED", "0"))

class AppConfig(BaseModel):
    """Application configuration."""
    debug: bool = os.getenv("DEBUG", "False").lower() == "true"
    log_level: str = os.getenv("LOG_LEVEL", "INFO")
    fft_workers: int = int(os.getenv("TUBAL_FFT_WORKERS", "1"))

# Initialize configurations
paths = Paths()
paths.create_directories()

solver_defaults = SolverDefaults()
app_config = AppConfig()

# Configure logging
logger.remove()  # Remove default handler
logger.add(
    paths.log_dir / "tubal.log",
    level=app_config.log_level,
    rotation="50 MB",
    retention="10 days",
    format="{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{line} | {message}",
)
logger.add(sys.stderr, level="DEBUG" if app_config.debug else app_config.log_level,
           format="{level: <8} | {message}")  # Console output

# Export configuration values
DEFAULT_RANK = solver_defaults.rank
DEFAULT_MU = solver_defaults.mu
DEFAULT_RHO = solver_defaults.rho
DEFAULT_MAX_ITERS = solver_defaults.max_iters
DEFAULT_EPS_SCALE = solver_defaults.eps_scale
DEFAULT_CSVD_ITERS = solver_defaults.csvd_iters
DEFAULT_CSVD_TOL = solver_defaults.csvd_tol
DEFAULT_SEED = solver_defaults.seed

DEBUG = app_config.debug
LOG_LEVEL = app_config.log_level
FFT_WORKERS = app_config.fft_workers
