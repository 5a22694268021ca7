#!/usr/bin/env python3
"""
Setup check script for the STIRAP toolkit.
Checks for dependencies and provides helpful setup instructions.
"""

import sys


def check_dependencies():
    """Check if all required dependencies are installed."""
    required_packages = {
        'numpy': 'numpy',
        'pydantic': 'pydantic',
        'python-dotenv': 'dotenv',
        'pytest': 'pytest',
        'hypothesis': 'hypothesis',
    }

    missing = []

    for package_name, import_name in required_packages.items():
        try:
            __import__(import_name)
        except ImportError:
            missing.append(package_name)

    return missing


def main():
    """Main setup routine."""
    print("\n" + "=" * 70)
    print("STIRAP TOOLKIT - SETUP CHECK")
    print("=" * 70 + "\n")

    missing = check_dependencies()

    if missing:
        print("Missing dependencies detected:")
        for pkg in missing:
            print(f"   - {pkg}")

        print("\nRun this command:")
        print("  pip install -r requirements.txt\n")
        print("Or install manually:")
        print(f"  pip install {' '.join(missing)}\n")
        sys.exit(1)

    print("All dependencies installed!\n")

    try:
        from model import SystemConfig
        from propagator import propagate
        from diagnostics import eigen_spectrum
        from cli import SCENARIOS
    except ImportError as e:
        print(f"Error importing modules: {e}")
        print("Try reinstalling:")
        print("  pip install --force-reinstall -r requirements.txt")
        sys.exit(1)

    print("All modules imported successfully!\n")
    print("=" * 70)
    print("READY TO RUN")
    print("=" * 70 + "\n")
    print("1. Demo:")
    print("   $ python quickstart.py\n")
    print("2. CLI:")
    print(f"   $ python main.py scenario list   ({len(SCENARIOS)} builtin scenarios)\n")
    print("3. Tests:")
    print("   $ pytest tests/ -v\n")


if __name__ == "__main__":
    main()
