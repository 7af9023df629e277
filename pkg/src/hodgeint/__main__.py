from hodgeint.cli import main

main()
