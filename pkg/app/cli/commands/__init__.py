"""
One module per subcommand; each exposes run(config) -> CommandResult
"""
