from django.apps import AppConfig


class ArithmeticConfig(AppConfig):
    name = 'arithmetic'
    verbose_name = 'Кудитная QFT-арифметика'

    def ready(self):
        """
        Метод вызывается при готовности приложения.
        Здесь регистрируем системные проверки настроек симуляции.
        """
        from . import checks  # noqa: F401
