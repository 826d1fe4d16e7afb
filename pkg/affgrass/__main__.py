from affgrass.cli import main

main()
