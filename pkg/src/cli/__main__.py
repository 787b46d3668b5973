from src.cli.main import cli

cli(prog_name="inn")
