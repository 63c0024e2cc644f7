"""
Report experiment results. See `rwrs.reporting.formatting` for the console and text renderings.
"""
