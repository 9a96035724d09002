from gi0est.cli import cli

# worker processes import this module too
if __name__ == '__main__':
    cli()
