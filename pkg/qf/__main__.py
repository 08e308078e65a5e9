from qf.main import main

main()
