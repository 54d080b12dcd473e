from cott.cli import main

raise SystemExit(main())
