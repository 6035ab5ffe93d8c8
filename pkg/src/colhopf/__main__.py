from colhopf.cli import main

raise SystemExit(main())
