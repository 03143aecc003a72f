from g2forms.cli import main
import sys
sys.exit(main())
