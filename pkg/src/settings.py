import os
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = os.path.join(os.path.dirname(__file__), "..")


class Settings:
    @property
    def engine_config(self):
        return {
            "handle_step_budget": int(os.getenv("BRAID_HANDLE_STEP_BUDGET", "1000000")),
            "scan_workers": int(os.getenv("BRAID_SCAN_WORKERS", "4")),
            "random_seed": int(os.getenv("BRAID_RANDOM_SEED", "20240101")),
        }

    @property
    def report_config(self):
        return {
            "reports_dir": os.getenv(
                "BRAID_REPORTS_DIR", os.path.join(BASE_DIR, "reports")
            ),
        }


settings = Settings()
