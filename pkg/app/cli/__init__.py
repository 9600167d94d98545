"""
Command-line front end; run with `python -m app.cli`.
"""
