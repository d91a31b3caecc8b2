from njordan.main import main

main()
