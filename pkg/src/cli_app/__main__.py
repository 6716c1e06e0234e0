from cli_app.main import entrypoint

entrypoint()
