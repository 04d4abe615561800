# main_workflow.py
import logging
import sys

from dotenv import load_dotenv

from src.cli.commands import main
from src.config import get_settings

load_dotenv()

# Logging setup
logging.basicConfig(format="[%(levelname)s]: %(message)s", level=get_settings().log_level)
logger = logging.getLogger(__name__)


# ---------------------------------------------------------
# ENTRY POINT: python main_workflow.py <demo|solve|sweep|compare> ...
# ---------------------------------------------------------
if __name__ == "__main__":
    sys.exit(main())
