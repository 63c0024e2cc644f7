"""
Pretty-print experiment results as a `rich` table, as markdown and as plain text
"""
