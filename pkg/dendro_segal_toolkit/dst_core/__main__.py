"""Run the dst command line with ``python -m dendro_segal_toolkit.dst_core``."""

from .cli import main

if __name__ == "__main__":
    main()
