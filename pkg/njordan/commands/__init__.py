from njordan.commands import consequence, examples, norm, replay, search, verify_cert

COMMANDS = (replay, consequence, search, examples, norm, verify_cert)
