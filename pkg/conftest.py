"""Wire the Django settings for running the SimpleTestCase suites under pytest."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'qudit_lab.settings')
django.setup()
