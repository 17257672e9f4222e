from dagmetrics.cli import main

main()
