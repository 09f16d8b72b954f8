from ietforge import ietforge_cli

if __name__ == "__main__":
    ietforge_cli()
