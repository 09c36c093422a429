import sys

from knot_uncertainty import create_app


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    config_name = 'development' if '--debug' in argv else 'production'
    return create_app(config_name).run(argv)


if __name__ == "__main__":
    sys.exit(main())
