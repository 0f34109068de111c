import os
from pathlib import Path
from dotenv import load_dotenv

# Загружаем переменные окружения
load_dotenv()

# Продакшен-режим (например, расчёты на сервере по расписанию)
IS_PRODUCTION = os.environ.get('DJANGO_ENV') == 'production'

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# ========== БАЗОВЫЕ НАСТРОЙКИ ==========

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('SECRET_KEY', 'django-insecure-dev-key-change-in-production')

DEBUG = not IS_PRODUCTION

# ========== ОБЩИЕ НАСТРОЙКИ ==========

# Application definition
INSTALLED_APPS = [
    'arithmetic',
]

# База данных не нужна: все расчёты выполняются в памяти
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'ru-ru'
TIME_ZONE = 'Europe/Moscow'
USE_I18N = True
USE_TZ = True

# ========== ПАРАМЕТРЫ СИМУЛЯЦИИ ==========

# Число измерений (shots) по умолчанию
QUDIT_DEFAULT_SHOTS = int(os.environ.get('QUDIT_DEFAULT_SHOTS', 1024))

# Вероятность ошибки считывания одной цифры (0 = без шума)
QUDIT_DEFAULT_NOISE = float(os.environ.get('QUDIT_DEFAULT_NOISE', 0.0))

# Зерно генератора случайных чисел (PCG64)
QUDIT_DEFAULT_SEED = int(os.environ.get('QUDIT_DEFAULT_SEED', 2024))

# Максимальный размер плотного вектора состояния, который примет CLI
QUDIT_MAX_AMPLITUDES = int(os.environ.get('QUDIT_MAX_AMPLITUDES', 2 ** 22))

# Верхняя граница числа входов N в таблице sweep
QUDIT_SWEEP_MAX_INPUTS = int(os.environ.get('QUDIT_SWEEP_MAX_INPUTS', 8))

# Логирование
LOG_LEVEL = os.environ.get('QUDIT_LOG_LEVEL', 'WARNING' if IS_PRODUCTION else 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
}
