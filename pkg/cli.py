import sys

from knot_uncertainty.main import main

if __name__ == '__main__':
    sys.exit(main())
