if __name__ == "__main__":
    from ietforge import ietforge_cli

    ietforge_cli()
