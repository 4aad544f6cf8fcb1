# tests/__init__.py
# Makes 'tests' a package so pytest puts the project root on sys.path.
